//! Mosaic floorplans on an integer grid.
//!
//! Coordinates have their origin at the top-left corner with `y` growing
//! downward. Only the topology matters: every comparison goes through
//! [`MosaicFloorplan::canonical`], which replaces wall positions by their ranks.

mod io;
mod relations;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use io::{parse_floorplan, render_ascii};
pub(crate) use relations::maximal_segments;
pub use relations::{seg_room_relations, Orientation, SegRoomRelation, Segment, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Room {
    pub id: u32,
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl Room {
    pub fn new(id: u32, x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        Room { id, x1, y1, x2, y2 }
    }

    pub fn area(&self) -> i64 {
        (self.x2 - self.x1) * (self.y2 - self.y1)
    }

    /// Strict interior containment of a point given in doubled coordinates.
    fn contains2(&self, px: i64, py: i64) -> bool {
        2 * self.x1 < px && px < 2 * self.x2 && 2 * self.y1 < py && py < 2 * self.y2
    }

    fn overlaps(&self, other: &Room) -> bool {
        self.x1 < other.x2 && other.x1 < self.x2 && self.y1 < other.y2 && other.y1 < self.y2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeft,
    BottomLeft,
    TopRight,
    BottomRight,
}

/// A tiling of `[0,width]×[0,height]` by rooms.
///
/// The struct itself does not enforce the mosaic invariants so that invalid
/// inputs can be represented and diagnosed; every operation that needs them
/// checks [`MosaicFloorplan::validate`] first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MosaicFloorplan {
    pub width: i64,
    pub height: i64,
    pub rooms: Vec<Room>,
}

impl MosaicFloorplan {
    pub fn new(width: i64, height: i64, rooms: Vec<Room>) -> Result<Self> {
        let f = MosaicFloorplan {
            width,
            height,
            rooms,
        };
        f.ensure_valid()?;
        Ok(f)
    }

    pub fn unchecked(width: i64, height: i64, rooms: Vec<Room>) -> Self {
        MosaicFloorplan {
            width,
            height,
            rooms,
        }
    }

    pub fn single_room() -> Self {
        MosaicFloorplan::unchecked(1, 1, vec![Room::new(1, 0, 0, 1, 1)])
    }

    pub fn len(&self) -> usize {
        self.rooms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooms.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Diagnostics for every violated mosaic invariant; empty when valid.
    pub fn validate(&self) -> Vec<String> {
        let mut diags = Vec::new();
        if self.width <= 0 || self.height <= 0 {
            diags.push(format!(
                "bounding box {}x{} is not positive",
                self.width, self.height
            ));
            return diags;
        }
        if self.rooms.is_empty() {
            diags.push("a floorplan needs at least one room".into());
            return diags;
        }
        let mut ids = BTreeSet::new();
        for r in &self.rooms {
            if !ids.insert(r.id) {
                diags.push(format!("room id {} is used twice", r.id));
            }
            if r.x1 >= r.x2 || r.y1 >= r.y2 {
                diags.push(format!("room {} is degenerate", r.id));
            }
            if r.x1 < 0 || r.y1 < 0 || r.x2 > self.width || r.y2 > self.height {
                diags.push(format!("room {} leaves the bounding box", r.id));
            }
        }
        if !diags.is_empty() {
            return diags;
        }
        for (i, a) in self.rooms.iter().enumerate() {
            for b in &self.rooms[i + 1..] {
                if a.overlaps(b) {
                    diags.push(format!("rooms {} and {} overlap", a.id, b.id));
                }
            }
        }
        let area: i64 = self.rooms.iter().map(Room::area).sum();
        if diags.is_empty() && area != self.width * self.height {
            diags.push(format!(
                "rooms cover area {area} but the bounding box has area {}",
                self.width * self.height
            ));
        }
        if !diags.is_empty() {
            return diags;
        }
        let corners: BTreeSet<(i64, i64)> = self
            .rooms
            .iter()
            .flat_map(|r| [(r.x1, r.y1), (r.x1, r.y2), (r.x2, r.y1), (r.x2, r.y2)])
            .filter(|&(x, y)| 0 < x && x < self.width && 0 < y && y < self.height)
            .collect();
        for (x, y) in corners {
            let q = self.quadrants(x, y);
            if q[0] != q[1] && q[2] != q[3] && q[0] != q[2] && q[1] != q[3] {
                diags.push(format!("four rooms meet at ({x}, {y})"));
            }
        }
        diags
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let diags = self.validate();
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidFloorplan(diags))
        }
    }

    /// Index of the room whose interior contains a point in doubled coordinates.
    fn room_at2(&self, px: i64, py: i64) -> Option<usize> {
        self.rooms.iter().position(|r| r.contains2(px, py))
    }

    /// Rooms just NW, NE, SW, SE of an interior grid point.
    fn quadrants(&self, x: i64, y: i64) -> [Option<usize>; 4] {
        [
            self.room_at2(2 * x - 1, 2 * y - 1),
            self.room_at2(2 * x + 1, 2 * y - 1),
            self.room_at2(2 * x - 1, 2 * y + 1),
            self.room_at2(2 * x + 1, 2 * y + 1),
        ]
    }

    /// Replaces wall coordinates by their ranks and sorts rooms by position.
    pub fn canonical(&self) -> MosaicFloorplan {
        let xs: BTreeSet<i64> = self.rooms.iter().flat_map(|r| [r.x1, r.x2]).collect();
        let ys: BTreeSet<i64> = self.rooms.iter().flat_map(|r| [r.y1, r.y2]).collect();
        let xr: BTreeMap<i64, i64> = xs.iter().enumerate().map(|(i, &x)| (x, i as i64)).collect();
        let yr: BTreeMap<i64, i64> = ys.iter().enumerate().map(|(i, &y)| (y, i as i64)).collect();
        let mut rooms: Vec<Room> = self
            .rooms
            .iter()
            .map(|r| Room::new(r.id, xr[&r.x1], yr[&r.y1], xr[&r.x2], yr[&r.y2]))
            .collect();
        rooms.sort_by_key(|r| (r.y1, r.x1, r.id));
        MosaicFloorplan::unchecked(xs.len() as i64 - 1, ys.len() as i64 - 1, rooms)
    }

    /// Applies `x -> fx(x)`, `y -> fy(y)` to every coordinate. Both maps must be
    /// strictly increasing.
    pub fn stretch(&self, fx: impl Fn(i64) -> i64, fy: impl Fn(i64) -> i64) -> MosaicFloorplan {
        let rooms = self
            .rooms
            .iter()
            .map(|r| Room::new(r.id, fx(r.x1), fy(r.y1), fx(r.x2), fy(r.y2)))
            .collect();
        MosaicFloorplan::unchecked(fx(self.width) - fx(0), fy(self.height) - fy(0), rooms)
            .translated(-fx(0), -fy(0))
    }

    fn translated(mut self, dx: i64, dy: i64) -> MosaicFloorplan {
        for r in &mut self.rooms {
            r.x1 += dx;
            r.x2 += dx;
            r.y1 += dy;
            r.y2 += dy;
        }
        self
    }

    /// Multiplies all coordinates by `factor`.
    pub fn scaled(&self, factor: i64) -> MosaicFloorplan {
        self.stretch(|x| x * factor, |y| y * factor)
    }

    /// Mirror image across the vertical axis.
    pub fn flip_horizontal(&self) -> MosaicFloorplan {
        let w = self.width;
        let rooms = self
            .rooms
            .iter()
            .map(|r| Room::new(r.id, w - r.x2, r.y1, w - r.x1, r.y2))
            .collect();
        MosaicFloorplan::unchecked(self.width, self.height, rooms)
    }

    /// Mirror image across the horizontal axis.
    pub fn flip_vertical(&self) -> MosaicFloorplan {
        let h = self.height;
        let rooms = self
            .rooms
            .iter()
            .map(|r| Room::new(r.id, r.x1, h - r.y2, r.x2, h - r.y1))
            .collect();
        MosaicFloorplan::unchecked(self.width, self.height, rooms)
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> MosaicFloorplan {
        let rooms = self
            .rooms
            .iter()
            .map(|r| Room::new(r.id, r.y1, r.x1, r.y2, r.x2))
            .collect();
        MosaicFloorplan::unchecked(self.height, self.width, rooms)
    }

    pub fn rotate_180(&self) -> MosaicFloorplan {
        self.flip_horizontal().flip_vertical()
    }

    /// Removes the block at corner `c` by sliding one of its edges to the
    /// bounding rectangle.
    pub fn delete_corner(&self, c: Corner) -> Result<MosaicFloorplan> {
        self.ensure_valid()?;
        if self.len() < 2 {
            return Err(Error::InvalidArgument(
                "cannot delete a room from a single-room floorplan".into(),
            ));
        }
        Ok(self.delete_corner_raw(c).1)
    }

    /// Deletion without validation; also returns the id of the removed room.
    fn delete_corner_raw(&self, c: Corner) -> (u32, MosaicFloorplan) {
        match c {
            Corner::TopLeft => self.delete_top_left(),
            Corner::BottomLeft => {
                let (id, f) = self.flip_vertical().delete_top_left();
                (id, f.flip_vertical())
            }
            Corner::TopRight => {
                let (id, f) = self.flip_horizontal().delete_top_left();
                (id, f.flip_horizontal())
            }
            Corner::BottomRight => {
                let (id, f) = self.rotate_180().delete_top_left();
                (id, f.rotate_180())
            }
        }
    }

    fn delete_top_left(&self) -> (u32, MosaicFloorplan) {
        let bi = self
            .room_at2(1, 1)
            .expect("valid floorplan covers the origin");
        let b = self.rooms[bi];
        let (x, y) = (b.x2, b.y2);
        // '⊣' when the wall through the corner is vertical, '⊥' when horizontal.
        let vertical = if y == self.height {
            false
        } else if x == self.width {
            true
        } else {
            self.room_at2(2 * x - 1, 2 * y + 1) != self.room_at2(2 * x + 1, 2 * y + 1)
        };
        let mut rooms = Vec::with_capacity(self.len() - 1);
        for (i, r) in self.rooms.iter().enumerate() {
            if i == bi {
                continue;
            }
            let mut r = *r;
            if vertical && r.y1 == y && r.x2 <= x {
                r.y1 = 0;
            } else if !vertical && r.x1 == x && r.y2 <= y {
                r.x1 = 0;
            }
            rooms.push(r);
        }
        (
            b.id,
            MosaicFloorplan::unchecked(self.width, self.height, rooms),
        )
    }

    /// Room ids in the order repeated deletions at `c` remove them.
    fn deletion_order(&self, c: Corner) -> Vec<u32> {
        let mut order = Vec::with_capacity(self.len());
        let mut f = self.clone();
        while f.len() > 1 {
            let (id, next) = f.delete_corner_raw(c);
            order.push(id);
            f = next;
        }
        order.push(f.rooms[0].id);
        order
    }

    /// Room id -> label in top-left deletion order.
    pub fn labels(&self) -> Result<BTreeMap<u32, usize>> {
        self.ensure_valid()?;
        Ok(self.labels_raw())
    }

    fn labels_raw(&self) -> BTreeMap<u32, usize> {
        self.deletion_order(Corner::TopLeft)
            .into_iter()
            .enumerate()
            .map(|(i, id)| (id, i + 1))
            .collect()
    }

    /// Copy with every room id replaced by its top-left deletion label.
    pub fn relabeled(&self) -> Result<MosaicFloorplan> {
        let labels = self.labels()?;
        let mut f = self.clone();
        for r in &mut f.rooms {
            r.id = labels[&r.id] as u32;
        }
        Ok(f)
    }

    /// The Baxter permutation of the floorplan: rooms labeled in top-left
    /// deletion order, read in bottom-left deletion order.
    pub fn fp2bp(&self) -> Result<Permutation> {
        self.ensure_valid()?;
        Ok(self.fp2bp_raw())
    }

    fn fp2bp_raw(&self) -> Permutation {
        let labels = self.labels_raw();
        let values = self
            .deletion_order(Corner::BottomLeft)
            .into_iter()
            .map(|id| labels[&id])
            .collect();
        Permutation::from_vec_unchecked(values)
    }

    /// A floorplan whose [`fp2bp`](Self::fp2bp) is `p`. Room ids are the
    /// top-left deletion labels.
    ///
    /// Rooms are inserted at the top-left corner in decreasing label order,
    /// each insertion undoing one top-left deletion; the insertion that keeps
    /// the floorplan consistent with the restriction of `p` is kept.
    pub fn bp2fp(p: &Permutation) -> Result<MosaicFloorplan> {
        if !p.is_baxter() {
            return Err(Error::NotBaxter(p.compact()));
        }
        let n = p.len();
        let mut f = MosaicFloorplan::unchecked(1, 1, vec![Room::new(n as u32, 0, 0, 1, 1)]);
        for v in (1..n).rev() {
            let restricted: Vec<usize> = p.values().iter().copied().filter(|&x| x >= v).collect();
            let target = Permutation::standardize(&restricted)?;
            f = f
                .top_left_insertions(v as u32)
                .into_iter()
                .find(|g| g.fp2bp_raw() == target)
                .ok_or_else(|| {
                    Error::Construction(format!(
                        "no top-left insertion realizes {} (label {v})",
                        p.compact()
                    ))
                })?;
        }
        Ok(f.canonical())
    }

    /// Every way to add room `id` at the top-left corner so that deleting it
    /// again restores `self`.
    fn top_left_insertions(&self, id: u32) -> Vec<MosaicFloorplan> {
        let mut out = Vec::new();
        // bottom edge ends on a vertical wall that reaches the top boundary
        let tops: BTreeSet<i64> = self
            .rooms
            .iter()
            .filter(|r| r.y1 == 0)
            .map(|r| r.x2)
            .collect();
        for x in tops {
            let mut rooms: Vec<Room> = self
                .rooms
                .iter()
                .map(|r| {
                    let mut r = *r;
                    r.y2 += 1;
                    if r.y1 > 0 || r.x2 <= x {
                        r.y1 += 1;
                    }
                    r
                })
                .collect();
            rooms.push(Room::new(id, 0, 0, x, 1));
            out.push(MosaicFloorplan::unchecked(
                self.width,
                self.height + 1,
                rooms,
            ));
        }
        // right edge ends on a horizontal wall that reaches the left boundary
        let lefts: BTreeSet<i64> = self
            .rooms
            .iter()
            .filter(|r| r.x1 == 0)
            .map(|r| r.y2)
            .collect();
        for y in lefts {
            let mut rooms: Vec<Room> = self
                .rooms
                .iter()
                .map(|r| {
                    let mut r = *r;
                    r.x2 += 1;
                    if r.x1 > 0 || r.y2 <= y {
                        r.x1 += 1;
                    }
                    r
                })
                .collect();
            rooms.push(Room::new(id, 0, 0, 1, y));
            out.push(MosaicFloorplan::unchecked(
                self.width + 1,
                self.height,
                rooms,
            ));
        }
        out
    }

    /// Same room topology: equal Baxter permutations.
    pub fn equivalent(&self, other: &MosaicFloorplan) -> Result<bool> {
        Ok(self.fp2bp()? == other.fp2bp()?)
    }

    /// Every set of rooms whose union is a rectangle, as sets of top-left
    /// deletion labels. Singletons and the whole floorplan are included.
    pub fn enveloping_rectangles(&self) -> Result<BTreeSet<BTreeSet<usize>>> {
        let labels = self.labels()?;
        let xs: Vec<i64> = self
            .rooms
            .iter()
            .flat_map(|r| [r.x1, r.x2])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let ys: Vec<i64> = self
            .rooms
            .iter()
            .flat_map(|r| [r.y1, r.y2])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut out = BTreeSet::new();
        for (i, &x1) in xs.iter().enumerate() {
            for &x2 in &xs[i + 1..] {
                for (j, &y1) in ys.iter().enumerate() {
                    for &y2 in &ys[j + 1..] {
                        let inside: Vec<&Room> = self
                            .rooms
                            .iter()
                            .filter(|r| x1 <= r.x1 && r.x2 <= x2 && y1 <= r.y1 && r.y2 <= y2)
                            .collect();
                        let area: i64 = inside.iter().map(|r| r.area()).sum();
                        if !inside.is_empty() && area == (x2 - x1) * (y2 - y1) {
                            out.insert(inside.iter().map(|r| labels[&r.id]).collect());
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Replaces room `id` by a scaled copy of `inner`, keeping inner room ids
    /// mapped through `ids`. Inner walls are offset by `tag` so that they
    /// never line up with walls of other embedded floorplans.
    pub(crate) fn embed(
        host: &MosaicFloorplan,
        parts: &[(u32, MosaicFloorplan)],
    ) -> MosaicFloorplan {
        let host = host.canonical();
        let m = parts.len() as i64;
        let max_w = parts.iter().map(|(_, g)| g.width).max().unwrap_or(1);
        let max_h = parts.iter().map(|(_, g)| g.height).max().unwrap_or(1);
        let sx = (max_w + 1) * (m + 1);
        let sy = (max_h + 1) * (m + 1);
        let mut rooms = Vec::new();
        for r in &host.rooms {
            let Some((slot, (_, inner))) = parts
                .iter()
                .enumerate()
                .find(|(_, (host_id, _))| *host_id == r.id)
            else {
                rooms.push(Room::new(r.id, r.x1 * sx, r.y1 * sy, r.x2 * sx, r.y2 * sy));
                continue;
            };
            let inner = inner.canonical();
            let tag = slot as i64 + 1;
            let map_x = |c: i64| {
                if c == 0 {
                    r.x1 * sx
                } else if c == inner.width {
                    r.x2 * sx
                } else {
                    r.x1 * sx + c * (m + 1) + tag
                }
            };
            let map_y = |c: i64| {
                if c == 0 {
                    r.y1 * sy
                } else if c == inner.height {
                    r.y2 * sy
                } else {
                    r.y1 * sy + c * (m + 1) + tag
                }
            };
            for q in &inner.rooms {
                rooms.push(Room::new(
                    q.id,
                    map_x(q.x1),
                    map_y(q.y1),
                    map_x(q.x2),
                    map_y(q.y2),
                ));
            }
        }
        MosaicFloorplan::unchecked(host.width * sx, host.height * sy, rooms).canonical()
    }

    pub fn room(&self, id: u32) -> Option<&Room> {
        self.rooms.iter().find(|r| r.id == id)
    }
}
