// SPDX-License-Identifier: Apache-2.0
#include <appellfield/cli.hpp>

int main(int argc, char** argv) { return appellfield::cli::run(argc, argv); }
