#include <iostream>

#include "capflow/cli.hpp"

int main(int argc, char** argv) {
    return capflow::cli::run_cli(argc, argv, std::cout, std::cerr);
}
