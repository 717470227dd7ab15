#include <iostream>

#include <lagrange/cli.hpp>

int main(int argc, char **argv)
{
    return lagrange::cli::main(argc, argv, std::cout, std::cerr);
}
