use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::enumerate;
use crate::error::Result;

/// A `k`-wheel `(v0; v1, …, vk)`: a full `k`-cycle in the link of the hub.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wheel {
    pub hub: usize,
    pub rim: Vec<usize>,
}

impl Wheel {
    pub fn len(&self) -> usize {
        self.rim.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rim.is_empty()
    }

    /// Hub first, then the rim in cyclic order.
    pub fn vertices(&self) -> Vec<usize> {
        std::iter::once(self.hub).chain(self.rim.iter().copied()).collect()
    }

    pub fn validate(&self, x: &FlagComplex) -> bool {
        let k = self.rim.len();
        let n = x.len();
        if k < 4 || self.hub >= n || self.rim.iter().any(|&v| v >= n || v == self.hub) {
            return false;
        }
        self.rim.iter().all(|&v| x.adjacent(self.hub, v))
            && (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    x.adjacent(self.rim[i], self.rim[j]) == consecutive
                })
            })
    }

    /// The same wheel with the rim rotated so that `rim[i]` comes first.
    fn rotated(&self, i: usize) -> Wheel {
        let mut rim = self.rim.clone();
        rim.rotate_left(i);
        Wheel { hub: self.hub, rim }
    }
}

/// A `k`-wheel with a pendant triangle `⟨v1, v2, t⟩` glued along the rim edge `v1 v2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WheelWithPendant {
    pub wheel: Wheel,
    pub pendant: usize,
}

impl WheelWithPendant {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.wheel.vertices();
        v.push(self.pendant);
        v
    }

    pub fn validate(&self, x: &FlagComplex) -> bool {
        let t = self.pendant;
        self.wheel.validate(x)
            && t < x.len()
            && !self.wheel.vertices().contains(&t)
            && x.adjacent(t, self.wheel.rim[0])
            && x.adjacent(t, self.wheel.rim[1])
    }

    /// Whether the union of the wheel and the pendant triangle is a full subcomplex, i.e. the
    /// apex is adjacent to no wheel vertex other than `v1, v2`.
    pub fn is_full(&self, x: &FlagComplex) -> bool {
        let t = self.pendant;
        !x.adjacent(t, self.wheel.hub) && self.wheel.rim[2..].iter().all(|&v| !x.adjacent(t, v))
    }

    /// Some vertex `v` with every vertex of the configuration in `B_1(v)`.
    pub fn dominator(&self, x: &FlagComplex) -> Option<usize> {
        let g = x.skeleton();
        let mut common = g.full_set();
        for v in self.vertices() {
            common.intersect_with(&g.closed_row(v));
        }
        common.ones().next()
    }
}

/// Visit every `k`-wheel, hub by hub. Rims come out starting at their smallest vertex.
pub fn for_each_wheel<F>(x: &FlagComplex, k: usize, budget: &Budget, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&Wheel) -> ControlFlow<()>,
{
    for hub in 0..x.len() {
        if wheels_at(x, hub, k, budget, &mut visit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Visit the `k`-wheels with hub `hub`.
pub fn wheels_at<F>(x: &FlagComplex, hub: usize, k: usize, budget: &Budget, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&Wheel) -> ControlFlow<()>,
{
    let g = x.skeleton();
    let link = g.row(hub).clone();
    enumerate::for_each_induced_cycle(g, &link, k, k, budget, |rim| {
        visit(&Wheel {
            hub,
            rim: rim.to_vec(),
        })
    })
}

/// Visit every `k`-wheel with a pendant triangle whose hub is `hub`: for each wheel, each rim
/// edge and each apex outside the wheel adjacent to both ends of the edge.
pub fn pendant_wheels_at<F>(
    x: &FlagComplex,
    hub: usize,
    k: usize,
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&WheelWithPendant) -> ControlFlow<()>,
{
    let g = x.skeleton();
    wheels_at(x, hub, k, budget, |w| {
        let mut outside = g.full_set();
        for v in w.vertices() {
            outside.set(v, false);
        }
        for i in 0..k {
            let (a, b) = (w.rim[i], w.rim[(i + 1) % k]);
            let mut apexes = outside.clone();
            apexes.intersect_with(g.row(a));
            apexes.intersect_with(g.row(b));
            if apexes.is_clear() {
                continue;
            }
            let rotated = w.rotated(i);
            for t in apexes.ones() {
                let pw = WheelWithPendant {
                    wheel: rotated.clone(),
                    pendant: t,
                };
                if visit(&pw).is_break() {
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    })
}

pub fn for_each_pendant_wheel<F>(
    x: &FlagComplex,
    k: usize,
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&WheelWithPendant) -> ControlFlow<()>,
{
    for hub in 0..x.len() {
        if pendant_wheels_at(x, hub, k, budget, &mut visit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All `k`-wheels.
pub fn enumerate_wheels(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Vec<Wheel>> {
    let mut out = Vec::new();
    let _ = for_each_wheel(x, k, budget, |w| {
        out.push(w.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// All `k`-wheels with a pendant triangle.
pub fn enumerate_pendant_wheels(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Vec<WheelWithPendant>> {
    let mut out = Vec::new();
    let _ = for_each_pendant_wheel(x, k, budget, |w| {
        out.push(w.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn octahedron_has_one_four_wheel_per_hub() {
        let oct = corpus::octahedron();
        let ws = enumerate_wheels(&oct, 4, &Budget::default()).unwrap();
        assert_eq!(ws.len(), 6);
        assert!(ws.iter().all(|w| w.validate(&oct)));
        let hubs: Vec<usize> = ws.iter().map(|w| w.hub).collect();
        assert_eq!(hubs, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn five_wheel_has_exactly_its_defining_wheel() {
        let w = corpus::wheel(5);
        let ws = enumerate_wheels(&w, 5, &Budget::default()).unwrap();
        assert_eq!(
            ws,
            vec![Wheel {
                hub: 0,
                rim: vec![1, 2, 3, 4, 5]
            }]
        );
        assert!(enumerate_pendant_wheels(&w, 5, &Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn hexagonal_patch_has_no_four_wheels() {
        let hex = corpus::hexpatch(3);
        assert!(enumerate_wheels(&hex, 4, &Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn pendant_apex_sits_on_the_first_rim_edge() {
        let x = corpus::full_pendant_wheel();
        let pws = enumerate_pendant_wheels(&x, 5, &Budget::default()).unwrap();
        assert_eq!(pws.len(), 1);
        let pw = &pws[0];
        assert!(pw.validate(&x));
        assert!(pw.is_full(&x));
        assert_eq!(pw.dominator(&x), None);
    }
}
