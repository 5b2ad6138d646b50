#include <iostream>
#include <string>
#include <vector>

#include "farey/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return farey::cli::run(std::move(args), std::cout, std::cerr, farey::cli::Environment::from_process());
}
