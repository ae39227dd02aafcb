#include <iostream>

#include "framed/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& name : framed::suite_names()) {
    const auto r = framed::run_suite(name);
    std::cout << framed::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
