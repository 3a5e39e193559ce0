#include "catmode/cli.hpp"

int main(int argc, char** argv) { return catmode::cli::run(argc, argv); }
