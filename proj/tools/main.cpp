#include "commands.hpp"

int main(int argc, char** argv) { return rectpack::cli::run(argc, argv); }
