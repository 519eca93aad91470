#include "cli.hpp"

int main(int argc, char** argv) {
    return vinberg::cli::cli_run(argc, argv);
}
