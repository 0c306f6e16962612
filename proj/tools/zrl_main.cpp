#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "zrl/cli.hpp"
#include "zrl/errors.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    auto config = zrl::parse_args(args);
    return zrl::run(config, std::cout, std::cerr);
  } catch (const zrl::HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const zrl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
