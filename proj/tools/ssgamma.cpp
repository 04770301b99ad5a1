#include "cli.hpp"

int main(int argc, char** argv) { return ssgamma::cli::run(argc, argv); }
