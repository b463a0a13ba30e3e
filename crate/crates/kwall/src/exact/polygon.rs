use num_traits::{Signed, Zero};

use super::{int, ExactError, Rat, Vec2};

/// What a convex vertex list actually is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Empty,
    Point,
    Segment,
    Region,
}

/// Convex polygon with counter-clockwise vertices and no redundant points.
///
/// Degenerate results of clipping (empty, a point, a segment) are ordinary
/// values; see [`Polygon2::shape`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon2 {
    vertices: Vec<Vec2>,
}

/// `{ u : <u, normal> >= offset }`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub normal: Vec2,
    pub offset: Rat,
}

impl HalfPlane {
    pub fn new(normal: Vec2, offset: Rat) -> Self {
        HalfPlane { normal, offset }
    }

    fn slack(&self, p: &Vec2) -> Rat {
        p.dot(&self.normal) - &self.offset
    }

    pub fn contains(&self, p: &Vec2) -> bool {
        !self.slack(p).is_negative()
    }
}

impl Polygon2 {
    /// Convex hull of arbitrary points (Andrew's monotone chain).
    pub fn hull(points: impl IntoIterator<Item = Vec2>) -> Self {
        let mut pts: Vec<Vec2> = points.into_iter().collect();
        pts.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
        pts.dedup();
        if pts.len() <= 2 {
            return Polygon2 { vertices: pts };
        }
        let turn = |o: &Vec2, a: &Vec2, b: &Vec2| (a - o).cross(&(b - o));
        let mut lower: Vec<Vec2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Vec2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Polygon2 { vertices: lower }
    }

    pub fn empty() -> Self {
        Polygon2 { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn shape(&self) -> Shape {
        match self.vertices.len() {
            0 => Shape::Empty,
            1 => Shape::Point,
            2 => Shape::Segment,
            _ => Shape::Region,
        }
    }

    /// Shoelace area; zero for degenerate shapes.
    pub fn area(&self) -> Rat {
        if self.shape() != Shape::Region {
            return Rat::zero();
        }
        let n = self.vertices.len();
        let twice: Rat = (0..n).map(|i| self.vertices[i].cross(&self.vertices[(i + 1) % n])).sum();
        twice / int(2)
    }

    pub fn contains(&self, p: &Vec2) -> bool {
        match self.shape() {
            Shape::Empty => false,
            Shape::Point => &self.vertices[0] == p,
            Shape::Segment => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                (b - a).cross(&(p - a)).is_zero() && (p - a).dot(&(p - b)) <= Rat::zero()
            }
            Shape::Region => {
                let n = self.vertices.len();
                (0..n).all(|i| {
                    let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                    !(b - a).cross(&(p - a)).is_negative()
                })
            }
        }
    }

    pub fn translate(&self, by: &Vec2) -> Self {
        Polygon2::hull(self.vertices.iter().map(|v| v + by))
    }

    /// Image under the linear map with columns `(c1, c2)`.
    pub fn map_linear(&self, c1: &Vec2, c2: &Vec2) -> Self {
        Polygon2::hull(self.vertices.iter().map(|v| &c1.scale(&v.x) + &c2.scale(&v.y)))
    }
}

/// `p` intersected with a closed half-plane.
pub fn clip(p: &Polygon2, h: &HalfPlane) -> Polygon2 {
    let vs = &p.vertices;
    match vs.len() {
        0 => return Polygon2::empty(),
        1 => {
            return if h.contains(&vs[0]) { p.clone() } else { Polygon2::empty() };
        }
        _ => {}
    }
    let n = vs.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = &vs[i];
        let b = &vs[(i + 1) % n];
        let (sa, sb) = (h.slack(a), h.slack(b));
        if !sa.is_negative() {
            out.push(a.clone());
        }
        if (sa.is_negative() && sb.is_positive()) || (sa.is_positive() && sb.is_negative()) {
            let t = &sa / (&sa - &sb);
            out.push(a + &(b - a).scale(&t));
        }
    }
    Polygon2::hull(out)
}

/// Exact area and area centroid of a two-dimensional polygon.
pub fn area_centroid(p: &Polygon2) -> Result<(Rat, Vec2), ExactError> {
    match p.shape() {
        Shape::Empty => return Err(ExactError::Degenerate("empty polygon")),
        Shape::Point => return Err(ExactError::Degenerate("polygon is a point")),
        Shape::Segment => return Err(ExactError::Degenerate("polygon is a segment")),
        Shape::Region => {}
    }
    let vs = &p.vertices;
    let n = vs.len();
    let mut twice_area = Rat::zero();
    let mut cx = Rat::zero();
    let mut cy = Rat::zero();
    for i in 0..n {
        let (a, b) = (&vs[i], &vs[(i + 1) % n]);
        let w = a.cross(b);
        cx += (&a.x + &b.x) * &w;
        cy += (&a.y + &b.y) * &w;
        twice_area += w;
    }
    let six_area = &twice_area * int(3);
    Ok((twice_area / int(2), Vec2::new(cx / &six_area, cy / six_area)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn square() -> Polygon2 {
        Polygon2::hull([Vec2::ints(0, 0), Vec2::ints(1, 0), Vec2::ints(1, 1), Vec2::ints(0, 1)])
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let p = Polygon2::hull([
            Vec2::ints(0, 0),
            Vec2::ints(2, 0),
            Vec2::ints(1, 0),
            Vec2::ints(1, 1),
            Vec2::ints(0, 2),
            Vec2::ints(2, 2),
        ]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.area(), int(4));
    }

    #[test]
    fn clipping_the_unit_square() {
        let half = clip(&square(), &HalfPlane::new(Vec2::ints(1, 0), rat(1, 2)));
        assert_eq!(half.area(), rat(1, 2));
        let none = clip(&square(), &HalfPlane::new(Vec2::ints(1, 0), int(2)));
        assert_eq!(none.shape(), Shape::Empty);
    }

    #[test]
    fn clipping_to_an_edge_gives_a_segment() {
        let tri = Polygon2::hull([Vec2::ints(0, 0), Vec2::ints(1, 0), Vec2::new(int(0), rat(1, 4))]);
        let seg = clip(&tri, &HalfPlane::new(Vec2::ints(1, 4), int(1)));
        assert_eq!(seg.shape(), Shape::Segment);
        let pt = clip(&tri, &HalfPlane::new(Vec2::ints(1, 0), int(1)));
        assert_eq!(pt.shape(), Shape::Point);
    }

    #[test]
    fn centroids() {
        let simplex = Polygon2::hull([Vec2::ints(0, 0), Vec2::ints(1, 0), Vec2::ints(0, 1)]);
        assert_eq!(area_centroid(&simplex).unwrap(), (rat(1, 2), Vec2::new(rat(1, 3), rat(1, 3))));
        assert_eq!(area_centroid(&square()).unwrap(), (int(1), Vec2::new(rat(1, 2), rat(1, 2))));
        let tri = Polygon2::hull([Vec2::ints(0, 0), Vec2::ints(2, 0), Vec2::ints(0, 1)]);
        assert_eq!(area_centroid(&tri).unwrap(), (int(1), Vec2::new(rat(2, 3), rat(1, 3))));
    }

    #[test]
    fn centroid_refuses_degenerate_input() {
        let seg = Polygon2::hull([Vec2::ints(0, 0), Vec2::ints(1, 1)]);
        assert!(area_centroid(&seg).is_err());
        assert!(area_centroid(&Polygon2::empty()).is_err());
    }

    #[test]
    fn containment() {
        let s = square();
        assert!(s.contains(&Vec2::new(rat(1, 2), int(1))));
        assert!(!s.contains(&Vec2::new(rat(3, 2), int(0))));
    }
}
