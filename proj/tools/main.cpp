#include "lctkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const lctkit::CliResult r = lctkit::run_cli(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
