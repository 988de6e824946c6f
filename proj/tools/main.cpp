#include <iostream>

#include "necgraph/cli.hpp"

int main(int argc, char** argv) {
    return necgraph::run_main(argc, argv, std::cout, std::cerr);
}
