#include "tropqrt/cli.hpp"

int main(int argc, char** argv) {
    return tropqrt::run_cli(argc, argv);
}
