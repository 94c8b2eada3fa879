#include "hrecol/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return hrecol::run_cli(args, std::cin, std::cout, std::cerr);
}
