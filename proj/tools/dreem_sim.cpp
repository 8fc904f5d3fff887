#include <iostream>

#include "dreem/cli.hpp"

int main(int argc, char** argv) {
    return dreem::run_cli(argc, argv, std::cout, std::cerr);
}
