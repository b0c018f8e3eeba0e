#include "latsum/cli.hpp"

int main(int argc, char** argv) {
    return latsum::run_cli(argc, argv);
}
