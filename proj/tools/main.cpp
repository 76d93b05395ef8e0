#include <iostream>
#include <string>
#include <vector>

#include "sphereprod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = sphereprod::cli::run(args);
    std::cout << result.output();
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    return result.exit_code();
}
