#include <iostream>

#include "wavefan/cli_io.hpp"

int main(int argc, char** argv) {
  wavefan::RunConfig config;
  try {
    config = wavefan::parse_config(argc, argv);
  } catch (const wavefan::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const wavefan::Error& e) {
    std::cerr << "wavefan: " << e.what() << "\nRun 'wavefan --help' for usage.\n";
    return 2;
  }
  try {
    return wavefan::run(config, std::cout);
  } catch (const wavefan::InvalidParameter& e) {
    std::cerr << "wavefan " << wavefan::to_string(config.command) << ": " << e.what() << '\n';
    return 2;
  } catch (const wavefan::UnsupportedFlux& e) {
    std::cerr << "wavefan " << wavefan::to_string(config.command) << ": " << e.what() << '\n';
    return 2;
  } catch (const wavefan::Error& e) {
    std::cerr << "wavefan " << wavefan::to_string(config.command) << ": " << e.what() << '\n';
    return 1;
  }
}
