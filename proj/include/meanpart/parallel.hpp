// Copyright 2026 The meanpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

namespace meanpart {

/// Number of worker threads to use: the THREADS environment variable when set
/// (clamped to >= 1), otherwise std::thread::hardware_concurrency().
int thread_budget();

/// Override the budget programmatically (0 restores the default). Test hook.
void set_thread_budget(int n);

/// Runs fn(0) .. fn(count-1), possibly on several threads. Each index must
/// write only its own output slot; reductions belong to the caller, in fixed
/// index order, so results never depend on scheduling.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace meanpart
