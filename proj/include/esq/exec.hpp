#pragma once

namespace esq {

/// Serial runs are the reference; Parallel uses OpenMP where a kernel has one.
enum class Exec { Serial, Parallel };

}  // namespace esq
