#include <iostream>
#include <string>
#include <vector>

#include "clusterkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clusterkit::run_cli(args, std::cout, std::cerr);
}
