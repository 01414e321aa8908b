#include <iostream>

#include "rtt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rtt::run_cli(args, std::cout, std::cerr);
}
