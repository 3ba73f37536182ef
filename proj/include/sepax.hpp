/*
 * Copyright 2026 The sepax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEPAX_SEPAX_HPP
#define SEPAX_SEPAX_HPP

#include "sepax/alt_set.hpp"
#include "sepax/amd.hpp"
#include "sepax/axioms.hpp"
#include "sepax/json_io.hpp"
#include "sepax/lottery.hpp"
#include "sepax/lp.hpp"
#include "sepax/mechanism.hpp"
#include "sepax/parallel.hpp"
#include "sepax/paths.hpp"
#include "sepax/random.hpp"
#include "sepax/rational.hpp"
#include "sepax/separation.hpp"
#include "sepax/simplex.hpp"
#include "sepax/verify.hpp"
#include "sepax/weak_order.hpp"
#include "sepax/zoo.hpp"

#endif  // SEPAX_SEPAX_HPP
