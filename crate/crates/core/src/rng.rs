/// Splittable deterministic generator (splitmix64). Hand-rolled so the
/// random corpora are byte-identical across platforms and library versions.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Seed derived from several parts, so (seed, n, p) streams never collide.
    pub fn from_parts(parts: &[u64]) -> Self {
        let mut state = 0u64;
        for &p in parts {
            state = mix(state.wrapping_add(GAMMA).wrapping_add(p));
        }
        SplitMix64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Independent child stream; advancing one does not affect the other.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64 {
            state: mix(self.next_u64()),
        }
    }

    /// Uniform-enough value in [0, bound). Modulo bias is irrelevant here;
    /// determinism is what matters. Panics if bound is zero.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        (self.next_u64() % bound as u64) as usize
    }

    /// Inclusive range [lo, hi].
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi, "bad range");
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}
