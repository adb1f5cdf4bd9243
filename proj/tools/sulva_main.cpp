#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "sulva/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    int precision = 50;
    if (const char* env = std::getenv("SULVA_PRECISION")) {
        char* end = nullptr;
        long p = std::strtol(env, &end, 10);
        if (end && *end == '\0' && p >= 1 && p <= 100000)
            precision = static_cast<int>(p);
    }
    return sulva::run_cli(args, std::cout, std::cerr, precision);
}
