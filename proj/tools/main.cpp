#include <vector>

#include "fracosc/cli.hpp"

int main(int argc, char** argv) {
  return fracosc::cli::run_cli({argv + 1, argv + argc});
}
