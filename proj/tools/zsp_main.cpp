#include "zsp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zsp::run(std::move(args), std::cout, std::cerr);
}
