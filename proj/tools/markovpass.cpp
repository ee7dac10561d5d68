#include <iostream>
#include <string>
#include <vector>

#include "markovpass/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return markovpass::cli::main_with_args(args, std::cout, std::cerr);
}
