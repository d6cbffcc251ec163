/// An element of the dihedral group of order `2m`: the rotation by
/// `2πk/m`, or the reflection in the line at angle `πk/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub m: u32,
    pub reflection: bool,
    pub k: u32,
}

impl Dihedral {
    pub fn rotation(m: u32, k: i64) -> Self {
        Dihedral {
            m,
            reflection: false,
            k: k.rem_euclid(m as i64) as u32,
        }
    }

    pub fn reflection(m: u32, k: i64) -> Self {
        Dihedral {
            m,
            reflection: true,
            k: k.rem_euclid(m as i64) as u32,
        }
    }

    pub fn identity(m: u32) -> Self {
        Self::rotation(m, 0)
    }

    pub fn mul(&self, o: &Dihedral) -> Dihedral {
        debug_assert_eq!(self.m, o.m);
        let (a, b) = (self.k as i64, o.k as i64);
        match (self.reflection, o.reflection) {
            (false, false) => Self::rotation(self.m, a + b),
            (false, true) => Self::reflection(self.m, a + b),
            (true, false) => Self::reflection(self.m, a - b),
            (true, true) => Self::rotation(self.m, a - b),
        }
    }

    pub fn inverse(&self) -> Dihedral {
        if self.reflection {
            *self
        } else {
            Self::rotation(self.m, -(self.k as i64))
        }
    }

    pub fn reflection_length(&self) -> usize {
        match (self.reflection, self.k) {
            (true, _) => 1,
            (false, 0) => 0,
            (false, _) => 2,
        }
    }

    /// Coxeter length with respect to `s1 = Ref(0)`, `s2 = Ref(1)`.
    pub fn length(&self) -> usize {
        let (m, k) = (self.m as usize, self.k as usize);
        if self.reflection {
            // Ref(k) = s2 s1 s2 ... (2k-1 letters) = s1 s2 s1 ... (2(m-k)+1 letters)
            if k == 0 {
                1
            } else {
                (2 * k - 1).min(2 * (m - k) + 1)
            }
        } else {
            (2 * k).min(2 * (m - k))
        }
    }
}
