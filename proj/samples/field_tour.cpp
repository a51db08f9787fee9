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

// Build F_{3^2}, do a little arithmetic, then count points on a few curves.

#include <iostream>

#include <manypoints/manypoints.hpp>

int main() {
    using namespace manypoints;

    const Field f(3, 2);
    std::cout << "F_" << f.q() << " modulus (constant first):";
    for (u64 c : f.spec().modulus) std::cout << ' ' << c;
    std::cout << '\n';

    const ElementIndex alpha = 3;  // the class of x
    std::cout << "alpha^2 = " << f.square(alpha) << ", alpha^-1 = " << f.inv(alpha) << ", chi(alpha) = " << f.chi(alpha)
              << '\n';

    const ElementIndex minus_one = f.neg(f.one());
    const u64 elliptic = twisted_count(f, minus_one, family_twist(f, minus_one));
    std::cout << "#E^(lambda+3)_lambda at lambda=-1: " << elliptic << '\n';
    std::cout << "#C_lambda predicted: " << predicted_quartic_count(f, minus_one)
              << ", counted: " << quartic_count(f, minus_one) << ", bound: " << hws_bound(f.q(), 3) << '\n';
}
