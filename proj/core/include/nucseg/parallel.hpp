/*
 * nucseg : gray matter nuclei segmentation on QSM and T1WI
 *
 * Copyright 2026 The nucseg Authors
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

#pragma once

#include <functional>

#include "nucseg/common.hpp"

namespace nucseg {

/// Number of worker threads used by parallel_for (>= 1).
int worker_count();

/// Set worker count; 0 selects hardware concurrency. Takes effect for
/// subsequent parallel_for calls. Results are identical for any count:
/// ranges are split the same way and reductions happen in index order.
void set_worker_count(int n);

/// Run fn(begin, end) over [0, n) split into fixed chunks across workers.
/// fn must only write to state owned by its chunk. Chunk boundaries depend
/// only on n and grain, never on the worker count, so per-chunk output
/// (and any fixed-order reduction over chunks) is reproducible.
void parallel_for(i64 n, i64 grain, const std::function<void(i64, i64)>& fn);

}  // namespace nucseg
