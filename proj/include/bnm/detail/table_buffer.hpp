#pragma once

#include <cstddef>
#include <cstdlib>
#include <memory>
#include <new>
#include <type_traits>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace bnm::detail {

// Uninitialized array of trivial values. Large buffers are 2 MiB aligned and
// hinted for transparent huge pages; the quadratic table is otherwise
// dominated by first-touch page faults.
template <typename T>
class TableBuffer {
  static_assert(std::is_trivially_copyable_v<T> && std::is_trivially_destructible_v<T>);

 public:
  TableBuffer() = default;

  explicit TableBuffer(std::size_t count) : size_(count) {
    if (count == 0) return;
    constexpr std::size_t kHuge = std::size_t{1} << 21;
    const std::size_t bytes = count * sizeof(T);
    const std::size_t align = bytes >= kHuge ? kHuge : alignof(std::max_align_t);
    const std::size_t rounded = (bytes + align - 1) / align * align;
    void* raw = std::aligned_alloc(align, rounded);
    if (raw == nullptr) throw std::bad_alloc();
#if defined(__linux__) && defined(MADV_HUGEPAGE)
    if (align == kHuge) ::madvise(raw, rounded, MADV_HUGEPAGE);
#endif
    data_.reset(static_cast<T*>(raw));
  }

  T* data() { return data_.get(); }
  const T* data() const { return data_.get(); }
  std::size_t size() const { return size_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

 private:
  struct Free {
    void operator()(T* p) const { std::free(p); }
  };
  std::unique_ptr<T[], Free> data_;
  std::size_t size_ = 0;
};

}  // namespace bnm::detail
