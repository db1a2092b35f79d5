#include <iostream>
#include <vector>

#include "logicfuse/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return logicfuse::run_cli(args, std::cout, std::cerr);
}
