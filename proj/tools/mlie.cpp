#include "mlie/cli.hpp"

int main(int argc, char** argv) { return mlie::run_cli(argc, argv); }
