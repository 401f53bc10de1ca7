// Copyright 2026 The graphpe Authors
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

#include "graphpe/alloc_tracker.hpp"

#include <atomic>
#include <cstdlib>
#include <new>

namespace graphpe::alloc {
namespace {

std::atomic<std::size_t> g_current{0};
std::atomic<std::size_t> g_peak{0};

constexpr std::size_t kHeader = alignof(std::max_align_t);

void record_alloc(std::size_t size) noexcept {
  const std::size_t now = g_current.fetch_add(size, std::memory_order_relaxed) + size;
  std::size_t peak = g_peak.load(std::memory_order_relaxed);
  while (now > peak &&
         !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
  }
}

void record_free(std::size_t size) noexcept {
  g_current.fetch_sub(size, std::memory_order_relaxed);
}

void* allocate(std::size_t size, std::size_t align) noexcept {
  const std::size_t header = align > kHeader ? align : kHeader;
  void* base = nullptr;
  if (align > kHeader) {
    const std::size_t total = (header + size + align - 1) / align * align;
    base = std::aligned_alloc(align, total);
  } else {
    base = std::malloc(header + size);
  }
  if (base == nullptr) return nullptr;
  auto* user = static_cast<unsigned char*>(base) + header;
  *reinterpret_cast<std::size_t*>(user - sizeof(std::size_t)) = size;
  record_alloc(size);
  return user;
}

void deallocate(void* ptr, std::size_t align) noexcept {
  if (ptr == nullptr) return;
  const std::size_t header = align > kHeader ? align : kHeader;
  auto* user = static_cast<unsigned char*>(ptr);
  record_free(*reinterpret_cast<std::size_t*>(user - sizeof(std::size_t)));
  std::free(user - header);
}

void* allocate_or_throw(std::size_t size, std::size_t align) {
  if (size == 0) size = 1;
  for (;;) {
    if (void* p = allocate(size, align)) return p;
    std::new_handler handler = std::get_new_handler();
    if (handler == nullptr) throw std::bad_alloc();
    handler();
  }
}

}  // namespace

std::size_t current_bytes() noexcept { return g_current.load(std::memory_order_relaxed); }
std::size_t peak_bytes() noexcept { return g_peak.load(std::memory_order_relaxed); }
void reset_peak() noexcept { g_peak.store(current_bytes(), std::memory_order_relaxed); }

}  // namespace graphpe::alloc

using graphpe::alloc::allocate_or_throw;
using graphpe::alloc::deallocate;

namespace {
constexpr std::size_t kPlain = 0;
}

void* operator new(std::size_t size) { return allocate_or_throw(size, kPlain); }
void* operator new[](std::size_t size) { return allocate_or_throw(size, kPlain); }
void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
  try {
    return allocate_or_throw(size, kPlain);
  } catch (...) {
    return nullptr;
  }
}
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
  try {
    return allocate_or_throw(size, kPlain);
  } catch (...) {
    return nullptr;
  }
}
void* operator new(std::size_t size, std::align_val_t align) {
  return allocate_or_throw(size, static_cast<std::size_t>(align));
}
void* operator new[](std::size_t size, std::align_val_t align) {
  return allocate_or_throw(size, static_cast<std::size_t>(align));
}
void* operator new(std::size_t size, std::align_val_t align,
                   const std::nothrow_t&) noexcept {
  try {
    return allocate_or_throw(size, static_cast<std::size_t>(align));
  } catch (...) {
    return nullptr;
  }
}
void* operator new[](std::size_t size, std::align_val_t align,
                     const std::nothrow_t&) noexcept {
  try {
    return allocate_or_throw(size, static_cast<std::size_t>(align));
  } catch (...) {
    return nullptr;
  }
}

void operator delete(void* p) noexcept { deallocate(p, kPlain); }
void operator delete[](void* p) noexcept { deallocate(p, kPlain); }
void operator delete(void* p, std::size_t) noexcept { deallocate(p, kPlain); }
void operator delete[](void* p, std::size_t) noexcept { deallocate(p, kPlain); }
void operator delete(void* p, const std::nothrow_t&) noexcept { deallocate(p, kPlain); }
void operator delete[](void* p, const std::nothrow_t&) noexcept {
  deallocate(p, kPlain);
}
void operator delete(void* p, std::align_val_t align) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
void operator delete[](void* p, std::align_val_t align) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
void operator delete(void* p, std::size_t, std::align_val_t align) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
void operator delete[](void* p, std::size_t, std::align_val_t align) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
void operator delete(void* p, std::align_val_t align, const std::nothrow_t&) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
void operator delete[](void* p, std::align_val_t align,
                       const std::nothrow_t&) noexcept {
  deallocate(p, static_cast<std::size_t>(align));
}
