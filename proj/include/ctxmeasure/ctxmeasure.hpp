// Copyright 2026 The ctxmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXMEASURE_CTXMEASURE_HPP
#define CTXMEASURE_CTXMEASURE_HPP

#include "ctxmeasure/analytic.hpp"
#include "ctxmeasure/builders.hpp"
#include "ctxmeasure/error.hpp"
#include "ctxmeasure/io.hpp"
#include "ctxmeasure/lp.hpp"
#include "ctxmeasure/oracle.hpp"
#include "ctxmeasure/rational.hpp"
#include "ctxmeasure/system.hpp"

#endif  // CTXMEASURE_CTXMEASURE_HPP
