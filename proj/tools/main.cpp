#include <iostream>

#include "exb/cli.hpp"

int main(int argc, char** argv) {
    return exb::cli::run_cli(argc, argv, std::cout, std::cerr);
}
