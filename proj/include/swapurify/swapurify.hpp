// Copyright 2026 The swapurify Authors
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

#ifndef SWAPURIFY_SWAPURIFY_HPP
#define SWAPURIFY_SWAPURIFY_HPP

#include "swapurify/channels.hpp"
#include "swapurify/closed_form.hpp"
#include "swapurify/entanglement.hpp"
#include "swapurify/measure.hpp"
#include "swapurify/protocol.hpp"
#include "swapurify/qmat.hpp"
#include "swapurify/random.hpp"
#include "swapurify/report.hpp"
#include "swapurify/states.hpp"
#include "swapurify/verify.hpp"

#endif  // SWAPURIFY_SWAPURIFY_HPP
