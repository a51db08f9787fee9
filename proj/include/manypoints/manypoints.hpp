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

#ifndef MANYPOINTS_MANYPOINTS_HPP
#define MANYPOINTS_MANYPOINTS_HPP

#include "classify.hpp"
#include "curves.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "hasse.hpp"
#include "number_theory.hpp"
#include "parallel.hpp"
#include "poly_fp.hpp"
#include "search.hpp"

#endif  // MANYPOINTS_MANYPOINTS_HPP
