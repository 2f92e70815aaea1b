//! Floorplan text format and ASCII rendering.
//!
//! ```text
//! W H n
//! id x1 y1 x2 y2
//! ...
//! ```

use std::fmt;

use super::{MosaicFloorplan, Room};
use crate::error::{Error, Result};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Integer fields of one line with their one-based columns.
fn fields(line_no: usize, line: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let column = offset + start + 1;
        out.push(
            token
                .parse::<i64>()
                .map_err(|_| err(line_no, column, format!("'{token}' is not an integer")))?,
        );
        offset += start + len;
        rest = &tail[len..];
    }
    Ok(out)
}

/// Parses and validates a floorplan file. Blank lines and `#` comments are
/// skipped.
pub fn parse_floorplan(text: &str) -> Result<MosaicFloorplan> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "missing header `W H n`"))?;
    let h = fields(hline, header)?;
    if h.len() != 3 {
        return Err(err(hline, 1, "header must be `W H n`"));
    }
    let (width, height) = (h[0], h[1]);
    if width <= 0 || height <= 0 {
        return Err(err(hline, 1, "width and height must be positive"));
    }
    if h[2] < 1 {
        return Err(err(hline, 1, "room count must be at least 1"));
    }
    let n = h[2] as usize;

    let mut rooms = Vec::with_capacity(n);
    let mut last_line = hline;
    for (line_no, line) in lines {
        if rooms.len() == n {
            return Err(err(line_no, 1, format!("more than the declared {n} rooms")));
        }
        let v = fields(line_no, line)?;
        if v.len() != 5 {
            return Err(err(line_no, 1, "room lines must be `id x1 y1 x2 y2`"));
        }
        if v[0] < 0 || v[0] > u32::MAX as i64 {
            return Err(err(
                line_no,
                1,
                "room id must be a non-negative 32-bit integer",
            ));
        }
        let room = Room::new(v[0] as u32, v[1], v[2], v[3], v[4]);
        if room.x1 >= room.x2 || room.y1 >= room.y2 {
            return Err(err(
                line_no,
                1,
                format!("room {} needs x1<x2 and y1<y2", room.id),
            ));
        }
        if room.x1 < 0 || room.y1 < 0 || room.x2 > width || room.y2 > height {
            return Err(err(
                line_no,
                1,
                format!("room {} leaves the bounding box", room.id),
            ));
        }
        if let Some(prev) = rooms.iter().position(|r: &(usize, Room)| r.1.id == room.id) {
            return Err(err(
                line_no,
                1,
                format!("room id {} already used on line {}", room.id, rooms[prev].0),
            ));
        }
        if let Some((other_line, other)) = rooms.iter().find(|(_, r)| r.overlaps(&room)) {
            return Err(err(
                line_no,
                1,
                format!(
                    "room {} overlaps room {} (line {other_line})",
                    room.id, other.id
                ),
            ));
        }
        rooms.push((line_no, room));
        last_line = line_no;
    }
    if rooms.len() != n {
        return Err(err(
            last_line,
            1,
            format!("expected {n} rooms, found {}", rooms.len()),
        ));
    }
    let f = MosaicFloorplan::unchecked(width, height, rooms.into_iter().map(|(_, r)| r).collect());
    let diags = f.validate();
    if !diags.is_empty() {
        return Err(err(last_line, 1, diags.join("; ")));
    }
    Ok(f)
}

impl fmt::Display for MosaicFloorplan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.width, self.height, self.rooms.len())?;
        for r in &self.rooms {
            writeln!(f, "{} {} {} {} {}", r.id, r.x1, r.y1, r.x2, r.y2)?;
        }
        Ok(())
    }
}

const CELL_W: i64 = 4;
const CELL_H: i64 = 2;

/// Box drawing of the canonical grid with room ids at rectangle centres.
pub fn render_ascii(f: &MosaicFloorplan) -> Result<String> {
    f.ensure_valid()?;
    let g = f.canonical();
    let cols = (g.width * CELL_W + 1) as usize;
    let rows = (g.height * CELL_H + 1) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    for r in &g.rooms {
        let (c1, c2) = ((r.x1 * CELL_W) as usize, (r.x2 * CELL_W) as usize);
        let (r1, r2) = ((r.y1 * CELL_H) as usize, (r.y2 * CELL_H) as usize);
        for row in [r1, r2] {
            for cell in &mut grid[row][c1..=c2] {
                if *cell != '+' && *cell != '|' {
                    *cell = '-';
                }
            }
        }
        for line in &mut grid[r1..=r2] {
            for c in [c1, c2] {
                if line[c] != '+' && line[c] != '-' {
                    line[c] = '|';
                }
            }
        }
        for (row, c) in [(r1, c1), (r1, c2), (r2, c1), (r2, c2)] {
            grid[row][c] = '+';
        }
    }
    // crossings of a horizontal and a vertical edge drawn by different rooms
    for row in (0..rows).step_by(CELL_H as usize) {
        for c in (0..cols).step_by(CELL_W as usize) {
            let up = row > 0 && grid[row - 1][c] == '|';
            let down = row + 1 < rows && grid[row + 1][c] == '|';
            if grid[row][c] == '-' && (up || down) {
                grid[row][c] = '+';
            }
        }
    }
    for r in &g.rooms {
        let label = r.id.to_string();
        let cy = ((r.y1 + r.y2) * CELL_H / 2) as usize;
        let cx = ((r.x1 + r.x2) * CELL_W / 2) as usize;
        let start = cx
            .saturating_sub(label.len() / 2)
            .max((r.x1 * CELL_W) as usize + 1);
        for (i, ch) in label.chars().enumerate() {
            if start + i < (r.x2 * CELL_W) as usize {
                grid[cy][start + i] = ch;
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    Ok(out)
}
