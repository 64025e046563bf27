// Acceptance runner: executes the twelve named verification criteria with the
// default configuration and prints one line per criterion.  Exit status is
// nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "qaw/checks.hpp"

int main() {
    const std::vector<std::string> criteria = {
        "asc-gram-torus",
        "asc-qinv-orthogonality",
        "asc-difference-equations",
        "kernel-three-routes",
        "kernel-gram-grid",
        "univariate-operator-eigen",
        "kernel-duality",
        "hopf-exact-suite",
        "discrete-stencil-eigen",
        "mv-k-operator-eigen",
        "mv-kernel-identities",
        "reversal-and-omega",
    };
    qaw::checks::RunConfig cfg;
    int failures = 0;
    int idx = 0;
    for (const auto& name : criteria) {
        ++idx;
        try {
            for (auto& [rname, fn] : qaw::checks::registry())
                if (rname == name) {
                    qaw::CheckResult r = fn(cfg);
                    if (!r.pass) ++failures;
                    std::printf("%s criterion %2d %-26s residual=%.3e tol=%.1e %.2fs\n",
                                r.pass ? "PASS" : "FAIL", idx, r.check.c_str(), r.residual,
                                r.tol, r.seconds);
                }
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL criterion %2d %-26s error: %s\n", idx, name.c_str(), e.what());
        }
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
