#include "qptf/cli.hpp"

int main(int argc, char** argv) { return qptf::dispatch(argc, argv); }
