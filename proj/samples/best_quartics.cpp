/*
   Copyright 2026 The manypoints Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Best quartic in the family for each q given on the command line.

#include <cstdlib>
#include <iostream>
#include <thread>

#include <manypoints/manypoints.hpp>

int main(int argc, char** argv) {
    using namespace manypoints;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

    std::cout << "q\tlambda\t#C\tbound\tmissing\n";
    for (int i = 1; i < argc; ++i) {
        const u64 q = std::strtoull(argv[i], nullptr, 10);
        try {
            const LegendreSweep sweep = make_sweep(q);
            const BestCurveRecord best = best_curve(sweep, workers);
            const SurveyReport survey = family_survey(sweep, workers);
            std::cout << q << '\t' << best.best_lambda << '\t' << best.quartic_count_predicted << '\t'
                      << hws_bound(q, 3) << '\t';
            for (u64 n : survey.missing) std::cout << n << ' ';
            std::cout << '\n';
        } catch (const DomainError& e) {
            std::cerr << argv[i] << ": " << e.what() << '\n';
        }
    }
}
