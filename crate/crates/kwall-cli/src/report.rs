//! Reports: ordered key/value fields plus optional tables, rendered as
//! aligned text or JSON.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, headers: &[&str]) -> Self {
        Table { name: name.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    /// Cells of one column, by header.
    pub fn column(&self, header: &str) -> Option<Vec<&str>> {
        let k = self.headers.iter().position(|h| h == header)?;
        Some(self.rows.iter().map(|r| r[k].as_str()).collect())
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [String], &'a [String]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (h, c) in self.0.iter().zip(self.1) {
                    m.serialize_entry(h, c)?;
                }
                m.end()
            }
        }
        let rows: Vec<Row> = self.rows.iter().map(|r| Row(&self.headers, r)).collect();
        let mut st = s.serialize_struct("Table", 2)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub fields: Vec<(String, String)>,
    pub tables: Vec<Table>,
    pub sections: Vec<Report>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn field(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn table(&mut self, t: Table) -> &mut Self {
        self.tables.push(t);
        self
    }

    pub fn section(&mut self, r: Report) -> &mut Self {
        self.sections.push(r);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}{}\n", self.title));
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            out.push_str(&format!("{pad}  {k:<width$}  {v}\n"));
        }
        for t in &self.tables {
            out.push_str(&format!("{pad}  {}\n", t.name));
            let widths: Vec<usize> = (0..t.headers.len())
                .map(|c| t.rows.iter().map(|r| r[c].len()).chain([t.headers[c].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                format!("{pad}    {}\n", parts.join("  ").trim_end())
            };
            out.push_str(&line(&t.headers));
            for r in &t.rows {
                out.push_str(&line(r));
            }
        }
        for s in &self.sections {
            s.write_text(out, depth + 1);
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Fields<'a>(&'a [(String, String)]);
        impl Serialize for Fields<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(k, v)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("Report", 4)?;
        st.serialize_field("title", &self.title)?;
        st.serialize_field("fields", &Fields(&self.fields))?;
        if !self.tables.is_empty() {
            st.serialize_field("tables", &self.tables)?;
        }
        if !self.sections.is_empty() {
            st.serialize_field("sections", &self.sections)?;
        }
        st.end()
    }
}
