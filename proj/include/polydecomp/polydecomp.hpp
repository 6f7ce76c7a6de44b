#ifndef POLYDECOMP_POLYDECOMP_HPP
#define POLYDECOMP_POLYDECOMP_HPP

#include <polydecomp/error.hpp>
#include <polydecomp/domain.hpp>
#include <polydecomp/poly.hpp>
#include <polydecomp/multivariate.hpp>
#include <polydecomp/approot.hpp>
#include <polydecomp/decomp.hpp>
#include <polydecomp/decide.hpp>
#include <polydecomp/variety.hpp>
#include <polydecomp/io.hpp>

#endif // POLYDECOMP_POLYDECOMP_HPP
