use serde_json::{Map, Value};

/// Output of one command. Keys serialize in sorted order, so identical
/// inputs give identical bytes.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub witness: Option<Value>,
    pub corpus: Option<Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            result: Value::Null,
            witness: None,
            corpus: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("inputs".into(), Value::Object(self.inputs.clone()));
        map.insert("result".into(), self.result.clone());
        if let Some(w) = &self.witness {
            map.insert("witness".into(), w.clone());
        }
        if let Some(c) = &self.corpus {
            map.insert("corpus".into(), c.clone());
        }
        Value::Object(map)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        flatten(&self.to_value())
    }
}

/// One `path: value` line per leaf, in the same order as the JSON form.
pub fn flatten(value: &Value) -> String {
    let mut out = String::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, path: String, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(v, p, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                walk(v, format!("{path}[{i}]"), out);
            }
        }
        Value::Object(_) => out.push_str(&format!("{path}: {{}}\n")),
        Value::Array(_) => out.push_str(&format!("{path}: []\n")),
        Value::String(s) => out.push_str(&format!("{path}: {}\n", s.replace('\n', "\\n"))),
        other => out.push_str(&format!("{path}: {other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_paths() {
        let v = json!({"b": [1, {"x": "s"}], "a": {}, "c": null, "d": []});
        assert_eq!(flatten(&v), "a: {}\nb[0]: 1\nb[1].x: s\nc: null\nd: []\n");
    }

    #[test]
    fn json_is_stable() {
        let r = Report::new("info").input("file", "x.lie");
        assert_eq!(r.to_json(), r.clone().to_json());
        assert!(r.to_json().starts_with("{\n  \"command\": \"info\""));
    }
}
