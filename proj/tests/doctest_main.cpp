#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>

std::string g_cli_path;

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli-path=", 0) == 0) {
            g_cli_path = arg.substr(11);
        }
    }
    doctest::Context context(argc, argv);
    return context.run();
}
