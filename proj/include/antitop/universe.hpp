#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antitop {

/// Largest universe a SubsetMask can address.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of an n-point universe stored as a bit vector. Point index 0 is
/// the least significant bit. The width is kept so complements are
/// self-contained; bits at positions >= width are always clear.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;

  /// Bits above `width` are rejected by assertion; use `from_bits` at
  /// untrusted boundaries.
  constexpr SubsetMask(std::uint64_t bits, std::size_t width) noexcept
      : bits_(bits), width_(static_cast<std::uint8_t>(width)) {
    assert(width <= kMaxPoints);
    assert((bits & ~full_bits(width)) == 0);
  }

  static constexpr SubsetMask empty(std::size_t width) noexcept { return {0, width}; }
  static constexpr SubsetMask full(std::size_t width) noexcept {
    return {full_bits(width), width};
  }
  static constexpr SubsetMask singleton(std::size_t index, std::size_t width) noexcept {
    return {std::uint64_t{1} << index, width};
  }

  static constexpr std::uint64_t full_bits(std::size_t width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr std::size_t width() const noexcept { return width_; }

  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept { return bits_ == full_bits(width_); }
  constexpr std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t index) const noexcept {
    return index < width_ && ((bits_ >> index) & 1U) != 0;
  }
  constexpr bool is_subset_of(SubsetMask other) const noexcept {
    assert(width_ == other.width_);
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const noexcept {
    assert(width_ == other.width_);
    return (bits_ & other.bits_) != 0;
  }

  constexpr SubsetMask complement() const noexcept {
    return {~bits_ & full_bits(width_), width_};
  }
  constexpr SubsetMask with(std::size_t index) const noexcept {
    return {bits_ | (std::uint64_t{1} << index), width_};
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
    assert(a.width_ == b.width_);
    return {a.bits_ | b.bits_, a.width_};
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
    assert(a.width_ == b.width_);
    return {a.bits_ & b.bits_, a.width_};
  }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) noexcept {
    assert(a.width_ == b.width_);
    return {a.bits_ & ~b.bits_, a.width_};
  }
  constexpr SubsetMask operator~() const noexcept { return complement(); }

  friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;
  /// Canonical order: width first, then ascending numeric value.
  friend constexpr std::strong_ordering operator<=>(SubsetMask a, SubsetMask b) noexcept {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// Point indices in ascending order.
  std::vector<std::size_t> indices() const;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t width_ = 0;
};

/// A finite ordered ground set of distinct labeled points. Copies share the
/// label storage.
class Universe {
 public:
  /// Throws InvalidArgument on an empty list, duplicate labels, or more than
  /// kMaxPoints labels.
  explicit Universe(std::vector<std::string> labels);

  /// Points named "1".."n".
  static Universe numbered(std::size_t n);
  /// Points named "a".."z"; falls back to numbered labels for n > 26.
  static Universe lettered(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& label(std::size_t index) const { return (*labels_)[index]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const;

  SubsetMask empty_set() const noexcept { return SubsetMask::empty(size()); }
  SubsetMask full_set() const noexcept { return SubsetMask::full(size()); }

  /// Builds a mask from labels. Throws InvalidArgument on an unknown label.
  SubsetMask subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(SubsetMask mask) const;

  /// Throws UniverseMismatch unless `mask` has this universe's width.
  void check(SubsetMask mask, std::string_view what = "subset") const;

  friend bool operator==(const Universe& a, const Universe& b) noexcept {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// "{1,2,3}" style rendering with the universe's labels.
std::string to_string(const Universe& universe, SubsetMask mask);

}  // namespace antitop
