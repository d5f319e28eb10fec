#include <iostream>
#include <vector>

#include "balans/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return balans::cli::run(std::move(args), std::cout, std::cerr);
}
