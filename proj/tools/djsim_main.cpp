#include "djsim/cli.hpp"

int main(int argc, char** argv) {
  return djsim::cli::execute(argc, argv);
}
