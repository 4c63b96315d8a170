/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

// Prints the LQR gains, the analytic ROA verdict for a few states, and the
// simulated outcome for each, for all three presets.

#include <cstdio>

#include "pendroa/pendroa.hpp"

int main() {
    using namespace pendroa;
    const State probes[] = {{0.1, 0.0}, {0.3, -0.5}, {-0.6, 2.0}, {1.0, 0.0}};
    for (const char* name : {"normal", "long", "short"}) {
        const PendulumParams p = preset(name);
        const TorqueLimit lim = TorqueLimit::fraction_of_gravity(p, 0.5);
        const AnalyticOracle oracle = AnalyticOracle::build(p, {}, lim);
        std::printf("%-6s K = [%.4f, %.4f]  u_bar = %.4f\n", name, oracle.gains().k0, oracle.gains().k1,
                    lim.value());
        for (const State& x : probes) {
            const TrajectoryOutcome out = classify(p, oracle.gains(), lim, x);
            std::printf("  x0 = (%+.2f, %+.2f)  analytic %-3s  simulated %s\n", x.theta, x.omega,
                        oracle.contains(x) ? "in" : "out", out.converged ? "converges" : "fails");
        }
    }
    return 0;
}
