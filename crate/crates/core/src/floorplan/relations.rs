use std::collections::BTreeMap;

use super::MosaicFloorplan;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A maximal wall segment: the line `coord` and the extent `start..end` along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub orientation: Orientation,
    pub coord: i64,
    pub start: i64,
    pub end: i64,
}

/// Which side of the room the segment supports it from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Top,
    Left,
    Right,
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegRoomRelation {
    /// Index into the segment list returned alongside.
    pub segment: usize,
    /// Top-left deletion label of the room.
    pub room: usize,
    pub side: Side,
}

/// Maximal wall segments in the floorplan's own coordinates, sorted.
pub(crate) fn maximal_segments(f: &MosaicFloorplan) -> Vec<Segment> {
    // Room edges grouped by line, then merged into maximal segments.
    let mut lines: BTreeMap<(Orientation, i64), Vec<(i64, i64)>> = BTreeMap::new();
    for r in &f.rooms {
        for (o, c, s, e) in [
            (Orientation::Horizontal, r.y1, r.x1, r.x2),
            (Orientation::Horizontal, r.y2, r.x1, r.x2),
            (Orientation::Vertical, r.x1, r.y1, r.y2),
            (Orientation::Vertical, r.x2, r.y1, r.y2),
        ] {
            lines.entry((o, c)).or_default().push((s, e));
        }
    }
    let mut segments = Vec::new();
    for ((orientation, coord), mut spans) in lines {
        spans.sort_unstable();
        let mut cur = spans[0];
        for &(s, e) in &spans[1..] {
            if s <= cur.1 {
                cur.1 = cur.1.max(e);
            } else {
                segments.push(Segment {
                    orientation,
                    coord,
                    start: cur.0,
                    end: cur.1,
                });
                cur = (s, e);
            }
        }
        segments.push(Segment {
            orientation,
            coord,
            start: cur.0,
            end: cur.1,
        });
    }
    segments.sort();
    segments
}

/// Maximal segments of the canonical floorplan (sorted by geometry) and every
/// seg-room relation, sorted by `(segment, room, side)`.
pub fn seg_room_relations(f: &MosaicFloorplan) -> Result<(Vec<Segment>, Vec<SegRoomRelation>)> {
    let labels = f.labels()?;
    let f = f.canonical();

    let segments = maximal_segments(&f);

    let find = |o: Orientation, c: i64, s: i64, e: i64| {
        segments
            .iter()
            .position(|g| g.orientation == o && g.coord == c && g.start <= s && e <= g.end)
            .expect("every room edge lies on a maximal segment")
    };
    let mut relations = Vec::with_capacity(4 * f.len());
    for r in &f.rooms {
        let room = labels[&r.id];
        relations.push(SegRoomRelation {
            segment: find(Orientation::Horizontal, r.y1, r.x1, r.x2),
            room,
            side: Side::Top,
        });
        relations.push(SegRoomRelation {
            segment: find(Orientation::Vertical, r.x1, r.y1, r.y2),
            room,
            side: Side::Left,
        });
        relations.push(SegRoomRelation {
            segment: find(Orientation::Vertical, r.x2, r.y1, r.y2),
            room,
            side: Side::Right,
        });
        relations.push(SegRoomRelation {
            segment: find(Orientation::Horizontal, r.y2, r.x1, r.x2),
            room,
            side: Side::Bottom,
        });
    }
    relations.sort();
    Ok((segments, relations))
}
