#include <iostream>

#include "traderank/cli.hpp"

int main(int argc, char** argv) {
    return traderank::cli::main(argc, argv, std::cerr);
}
