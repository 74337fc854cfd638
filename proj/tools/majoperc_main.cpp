#include "majoperc/harness.hpp"

int main(int argc, char** argv) { return majoperc::cli(argc, argv); }
