/*
 * Copyright 2026 The qorrel Authors
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

#include "qorrel/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qorrel {

int thread_cap() {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
#else
  int hw = 1;
#endif
  const char* env = std::getenv("QORREL_THREADS");
  if (env != nullptr) {
    try {
      int cap = std::stoi(env);
      if (cap > 0 && cap < hw) return cap;
    } catch (const std::exception&) {
      // unparseable values fall back to the hardware default
    }
  }
  return hw;
}

void apply_thread_cap() {
#ifdef _OPENMP
  omp_set_num_threads(thread_cap());
#endif
}

}  // namespace qorrel
