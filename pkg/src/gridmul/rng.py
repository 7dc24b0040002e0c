"""Deterministic random streams for corpus generation.

Corpora must regenerate bit-identically from a seed on any
implementation, so the exact stream is pinned down here:

* The generator is splitmix64 with the standard constants: each draw
  advances the state by 0x9E3779B97F4A7C15 and outputs the new state
  passed through two xor-shift-multiply rounds (shift 30 with
  0xBF58476D1CE4E5B9, shift 27 with 0x94D049BB133111EB) and a final
  xor-shift by 31.  All arithmetic is modulo 2**64.
* A uniform digit in [0, 9] costs exactly one draw: ``(u >> 32) % 10``.
* A leading digit in [1, 9] costs exactly one draw:
  ``1 + (u >> 32) % 9``.  Reducing the high half of the word keeps the
  modulo rejection-free; the residual bias is below one part in 4e8.
* An n-digit operand is drawn most significant digit first: one
  leading-digit draw, then n-1 uniform draws.
* Substreams come from ``derive_seed(root, *parts)``: starting from
  the root seed, each part reseeds a fresh generator with
  ``state XOR part`` and takes its first output.  The operands of task
  t of shape s in a run seeded with g use the stream
  ``derive_seed(g, s, t)``, left operand drawn before the right one.
"""

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64; one 64-bit output per next_u64 call."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = s = (self.state + _GAMMA) & MASK64
        z = ((s ^ (s >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)


def derive_seed(root: int, *parts: int) -> int:
    """Fold substream indices into a reproducible child seed."""
    seed = root & MASK64
    for part in parts:
        seed = SplitMix64(seed ^ (part & MASK64)).next_u64()
    return seed


def draw_digit(gen: SplitMix64) -> int:
    """Uniform digit in [0, 9]; consumes one draw."""
    return (gen.next_u64() >> 32) % 10


def draw_leading_digit(gen: SplitMix64) -> int:
    """Uniform digit in [1, 9]; consumes one draw."""
    return 1 + (gen.next_u64() >> 32) % 9


def draw_operand(gen: SplitMix64, ndigits: int) -> list[int]:
    """An ndigits-long operand, most significant first, never zero-led."""
    if ndigits < 1:
        raise ValueError(f"operand needs at least one digit: {ndigits}")
    digits = [draw_leading_digit(gen)]
    for _ in range(1, ndigits):
        digits.append(draw_digit(gen))
    return digits
