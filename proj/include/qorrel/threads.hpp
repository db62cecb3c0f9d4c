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

#ifndef QORREL_THREADS_HPP
#define QORREL_THREADS_HPP

namespace qorrel {

// Worker count the kernels will use: hardware default, capped by the
// QORREL_THREADS environment variable when it is set to a positive integer.
int thread_cap();

// Installs the cap process-wide (call once from main). All kernel results
// are reduction-order deterministic, so the cap affects speed only.
void apply_thread_cap();

}  // namespace qorrel

#endif
