// Acceptance gate: runs every criterion at full desk scale and prints one
// pass/fail line each. Exit status 0 only when all eight pass.
//
// Criterion 6 is expected to fail: from rank 5 on, elements above their
// class minimum need not admit a single-conjugation length drop, so the
// single-step descent claim (and the height recursion on those elements) is
// genuinely false. The failure line carries the counterexample count; see
// the library notes in include/dlcoh/acceptance.hpp.

#include "dlcoh/acceptance.hpp"

#include <iostream>

int main() {
    dlcoh::AcceptanceOptions opt;
    opt.scale = dlcoh::AcceptanceScale::FullDesk;
    opt.out = &std::cout;
    auto results = dlcoh::run_acceptance(opt);
    bool ok = dlcoh::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "criteria failed") << std::endl;
    return ok ? 0 : 1;
}
