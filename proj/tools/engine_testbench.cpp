// CLI entry point; subcommands are wired up in cli.hpp as the modules land.
#include <cstdio>

int main() {
    std::puts("engine-testbench: not wired yet");
    return 0;
}
