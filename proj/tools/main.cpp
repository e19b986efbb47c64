#include <iostream>
#include <string>
#include <vector>

#include "bmgame/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bmgame::run_cli(args, std::cout, std::cerr);
}
