#include <string>
#include <vector>

#include "sylv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sylv::cli::run_cli(args);
}
