#include <nkconf/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return nkconf::run_cli(argc, argv, std::cout, std::cerr);
}
