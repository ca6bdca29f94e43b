#include "cli_app.hpp"

int main(int argc, char** argv) { return oscint::cli::run(argc, argv); }
