#pragma once

namespace jring {

// Selects between the serial reference path of a kernel and its OpenMP
// variant. Both are required to produce identical results.
enum class Execution { serial, parallel };

// Number of worker threads the parallel variants use (1 without OpenMP).
int parallel_thread_count();

}  // namespace jring
