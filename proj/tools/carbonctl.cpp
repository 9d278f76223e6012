#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "carbon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool has_dir = false;
    for (const auto& a : args)
        if (a == "--data-dir" || a.rfind("--data-dir=", 0) == 0) has_dir = true;
    if (!has_dir) {
        if (const char* env = std::getenv("CARBON_DATA_DIR")) {
            args.insert(args.begin(), env);
            args.insert(args.begin(), "--data-dir");
        }
    }
    return carbon::cli::run(args, std::cout, std::cerr);
}
