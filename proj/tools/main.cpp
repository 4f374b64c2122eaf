#include "cli.hpp"

#include <csignal>
#include <iostream>

namespace {

extern "C" void on_signal(int) { foulkes::cli::stop_flag().store(true); }

}  // namespace

int main(int argc, char** argv)
{
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    return foulkes::cli::run(argc, argv, std::cout, std::cerr);
}
