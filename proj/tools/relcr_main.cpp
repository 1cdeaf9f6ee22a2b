#include <string>
#include <vector>

#include "relcr/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return relcr::cli::run_command(args);
}
