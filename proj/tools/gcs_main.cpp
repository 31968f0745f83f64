#include <iostream>
#include <string>
#include <vector>

#include "gcs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gcs::cli::run(args, std::cout, std::cerr);
}
