#include <iostream>
#include <string>
#include <vector>

#include "igeo/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return igeo::run(args, std::cout, std::cerr);
}
