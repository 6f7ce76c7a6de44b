#include <polydecomp/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    const auto outcome = polydecomp::cli::run(argc, argv);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.status;
}
