#include "gendeg/cli.hpp"

int main(int argc, char** argv) {
    return gendeg::cli_main(argc, argv);
}
