#include <iostream>
#include <string>
#include <vector>

#include "mahlersep/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return msep::cli::run(args, std::cout, std::cerr);
}
