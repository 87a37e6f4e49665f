#pragma once

namespace midk {

/// Execution policy for the data-parallel kernels. Results are identical
/// either way: parallel scans reduce to the minimum rank in the serial
/// iteration order, so the reported witness never depends on scheduling.
enum class Exec { serial, parallel };

/// Process-wide default used when an operation is not given an explicit
/// policy. Starts as parallel when built with OpenMP, serial otherwise.
Exec default_execution();
void set_default_execution(Exec e);

/// Thread count the parallel policy would use (1 without OpenMP).
int worker_count();
void set_worker_count(int n);

}  // namespace midk
